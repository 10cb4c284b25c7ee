let entry = ["north maple", "violet omega"];
entry.push("omega finch");
for (let i = 0; i < 1; i++) {
  entry.unshift(i);
  let level = entry.shift();
}
print(entry.pop(), entry.length);
let val = [];
for (let i = 0; i < 2; i++) {
  val.push(i * 2);
}
let result = val.pop();
val.unshift(result);
print(val[0], val.length);
function stack(total) {
  if (total < 2) {
    return total;
  }
  return stack(total - 1) + stack(total - 2);
}
print(stack(10));
let first = [1000, 2, 255, 3];
let left = 0;
for (let i = 0; i < first.length; i++) {
  left = left + first[i];
}
print(left);
function tail(count) {
  const list = count * 9;
  return list - count;
}
print(tail(1024));
let value = false;
let stop = !value || 255 > 255 && 9 != 31;
if (stop) {
  print("silk");
} else if (value) {
  print("hemp");
} else {
  print(null);
}

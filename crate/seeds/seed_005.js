let prev = true;
let rank = !prev || 256 > 9 && 4 != 65536;
if (rank) {
  print("amber");
} else if (prev) {
  print("wagon");
} else {
  print(null);
}
let item = { width: 8, label: "ladder", next: [6, 31, 1000] };
item.width = item.width + item.next.length;
print(item.width, item.label);
let step = "tiger";
let pool = 0;
while (pool < 5) {
  step = step + "wren";
  pool++;
}
print(step.length, step);
let total = ["jacket heron", "tiger"];
total.push("anchor");
for (let i = 0; i < 1; i++) {
  total.unshift(i);
  let result = total.shift();
}
print(total.pop(), total.length);
function stack(name, limit) {
  let last = name * limit;
  if (last > 9) {
    return last;
  }
  return last * 2;
}
print(stack(6, 3), stack(255, 256));

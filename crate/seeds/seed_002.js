let area = ["falcon", "alpha"];
area.push("finch");
for (let i = 0; i < 1; i++) {
  area.unshift(i);
  let total = area.shift();
}
print(area.pop(), area.length);
let value = new Array(4);
value[0] = "jacket";
let prod = value.pop();
print(value.length, prod, value[0]);
function pool(kind, prev) {
  let cell = kind + prev;
  if (cell > 50) {
    return cell;
  }
  return cell * 5;
}
print(pool(4, 8), pool(2, 100));
let tag = [];
for (let i = 0; i < 2; i++) {
  tag.push(i * 1);
}
let sum = tag.pop();
tag.unshift(sum);
print(tag[0], tag.length);
function right(temp) {
  const color = temp * 9;
  return color - temp;
}
print(right(65535));

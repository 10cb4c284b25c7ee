function left(color, last) {
  let item = color + last;
  if (item > 5) {
    return item;
  }
  return item * 9;
}
print(left(15, 15), left(4096, 20));
let size = "saddle";
let step = 0;
while (step < 2) {
  size = size + "ruby";
  step++;
}
print(size.length, size);
let kind = String(4096) + "silk";
let label = "plum";
if (kind.length > 3) {
  label = kind + label;
}
print(kind, label.length);
let score = [100, 8, 6, 20];
let result = 0;
for (let i = 0; i < score.length; i++) {
  result = result + score[i];
}
print(result);
let items = [];
for (let i = 0; i < 6; i++) {
  items.push(i * 2);
}
let limit = items.pop();
items.unshift(limit);
print(items[0], items.length);
var cell = 65535;
function first() {
  cell = cell + 5;
  return cell;
}
first();
first();
print(cell);

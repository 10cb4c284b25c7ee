let size = stack => stack * 8;
let result = stack => {
  return size(stack) - 7;
};
print(size(4), result(255));
function name(item, height) {
  let node = item + height;
  if (node > 50) {
    return node;
  }
  return node * 2;
}
print(name(1, 20), name(25, 1000));
var mode = 100;
function entry() {
  mode = mode + 3;
  return mode;
}
entry();
entry();
print(mode);
let start = "hemp";
let head = 0;
while (head < 5) {
  start = start + "amber";
  head++;
}
print(start.length, start);
let list = [5, 12, 31, 9];
let table = 0;
for (let i = 0; i < list.length; i++) {
  table = table + list[i];
}
print(table);

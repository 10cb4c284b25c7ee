let depth = String(5) + "zebra jade";
let entry = "fig";
if (depth.length > 9) {
  entry = depth + entry;
}
print(depth, entry.length);
function start(color) {
  const store = color * 2;
  return store - color;
}
print(start(3));
let area = "swift";
let first = 0;
while (first < 4) {
  area = area + "red wren";
  first++;
}
print(area.length, area);
let flag = [3, 256, 65535, 7];
let items = 0;
for (let i = 0; i < flag.length; i++) {
  items = items + flag[i];
}
print(items);
let left = data => data * 8;
let width = data => {
  return left(data) - 1;
};
print(left(6), width(31));
var queue = 32;
function rank() {
  queue = queue + 5;
  return queue;
}
rank();
rank();
print(queue);

class value {
  pool(store) {
    return store + 3;
  }
  list() {
    return "tablet";
  }
}
let queue = new value();
print(queue.pool(20), queue.list());
let width = "cloud blue";
let prev = 0;
while (prev < 5) {
  width = width + "lime";
  prev++;
}
print(width.length, width);
let area = String(31) + "red";
let left = "anchor";
if (area.length > 8) {
  left = area + left;
}
print(area, left.length);
var total = 4096;
function items() {
  total = total + 3;
  return total;
}
items();
items();
print(total);
let last = step => step * 8;
let entry = step => {
  return last(step) - 3;
};
print(last(50), entry(50));

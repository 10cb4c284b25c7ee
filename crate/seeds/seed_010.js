function tag(result, data) {
  let stack = result - data;
  if (stack > 65535) {
    return stack;
  }
  return stack * 6;
}
print(tag(9, 1), tag(25, 4096));
let table = String(4) + "cloud";
let area = "quiver lemon";
if (table.length > 12) {
  area = table + area;
}
print(table, area.length);
let prev = [65536, 9, 1, 25];
let tail = 0;
for (let i = 0; i < prev.length; i++) {
  tail = tail + prev[i];
}
print(tail);
function cell(stop) {
  if (stop < 2) {
    return stop;
  }
  return cell(stop - 1) + cell(stop - 2);
}
print(cell(8));
let left = entry => entry * 9;
let key = entry => {
  return left(entry) - 8;
};
print(left(9), key(10));

var tag = 65535;
function flag() {
  tag = tag + 3;
  return tag;
}
flag();
flag();
print(tag);
function mode(item) {
  if (item < 2) {
    return item;
  }
  return mode(item - 1) + mode(item - 2);
}
print(mode(7));
function left(prod) {
  const queue = prod * 7;
  return queue - prod;
}
print(left(50));
var shape = function(depth, kind, head) {
  if (depth > kind) {
    return depth + head;
  }
  return kind + head;
};
print(shape(16, 64, 128), shape(8, 65535, "pepper finch"));
let area = false;
let total = !area || 5 > 50 && 255 != 1024;
if (total) {
  print("east");
} else if (area) {
  print("papaya");
} else {
  print(null);
}

var slot = function(step, name, limit) {
  if (step > name) {
    return step + limit;
  }
  return name + limit;
};
print(slot(256, 5, 32), slot(10, 1024, "lynx saddle"));
var shape = 5;
function mode() {
  shape = shape + 2;
  return shape;
}
mode();
mode();
print(shape);
let flag = true;
let count = !flag || 4096 > 256 && 256 != 65536;
if (count) {
  print("marten");
} else if (flag) {
  print("blue");
} else {
  print(null);
}
let color = String(0) + "delta";
let level = "ladder";
if (color.length > 6) {
  level = color + level;
}
print(color, level.length);
let first = "sable";
let tag = 0;
while (tag < 2) {
  first = first + "lynx";
  tag++;
}
print(first.length, first);
let node = [255, 64, 0, 9];
let key = 0;
for (let i = 0; i < node.length; i++) {
  key = key + node[i];
}
print(key);

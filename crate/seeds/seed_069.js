let buf = [];
for (let i = 0; i < 3; i++) {
  buf.push(i * 3);
}
let data = buf.pop();
buf.unshift(data);
print(buf[0], buf.length);
function height(limit, index) {
  let temp = limit - index;
  if (temp > 8) {
    return temp;
  }
  return temp * 1;
}
print(height(7, 20), height(10, 8));
function right(tag) {
  const level = tag * 6;
  return level - tag;
}
print(right(256));
var flag = function(label, shape, stack) {
  if (label > shape) {
    return label + stack;
  }
  return shape + stack;
};
print(flag(20, 7, 7), flag(128, 31, "south"));

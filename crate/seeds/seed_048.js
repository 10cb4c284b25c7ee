function start(label) {
  const tail = label * 5;
  return tail - label;
}
print(start(100));
function area(kind) {
  return { sum: kind, stop: function() {
    return kind + 7;
  } };
}
let mark = area(6);
print(mark.stop(), mark.sum);
let total = new Array(7);
total[0] = "tiger";
let key = total.pop();
print(total.length, key, total[0]);
let limit = false;
let items = !limit || 8 > 31 && 0 != 5;
if (items) {
  print("lion");
} else if (limit) {
  print("river");
} else {
  print(null);
}
let height = [16, 1000, 65536, 0];
let result = 0;
for (let i = 0; i < height.length; i++) {
  result = result + height[i];
}
print(result);

function color(size) {
  return { name: size, result: function() {
    return size + 255;
  } };
}
let items = color(9);
print(items.result(), items.name);
function depth(prev) {
  if (prev < 2) {
    return prev;
  }
  return depth(prev - 1) + depth(prev - 2);
}
print(depth(5));
var step = 15;
function last() {
  step = step + 5;
  return step;
}
last();
last();
print(step);
let sum = true;
let tag = !sum || 7 > 50 && 0 != 7;
if (tag) {
  print("robin");
} else if (sum) {
  print("ebony");
} else {
  print(null);
}
let left = [255, 100, 4096, 31];
let data = 0;
for (let i = 0; i < left.length; i++) {
  data = data + left[i];
}
print(data);

let prod = true;
let stop = !prod || 32 > 6 && 7 != 1000;
if (stop) {
  print("engine");
} else if (prod) {
  print("marten maple");
} else {
  print(null);
}
var head = function(level, data, temp) {
  if (level > data) {
    return level + temp;
  }
  return data + temp;
};
print(head(10, 8, 255), head(16, 1, "linen"));
let left = "needle";
let limit = 0;
while (limit < 1) {
  left = left + "sable";
  limit++;
}
print(left.length, left);
function store(first) {
  if (first < 2) {
    return first;
  }
  return store(first - 1) + store(first - 2);
}
print(store(10));
let width = queue => queue * 7;
let state = queue => {
  return width(queue) - 7;
};
print(width(1000), state(20));

function count(table) {
  const tag = table * 3;
  return tag - table;
}
print(count(2));
let right = [];
for (let i = 0; i < 2; i++) {
  right.push(i * 1);
}
let width = right.pop();
right.unshift(width);
print(right[0], right.length);
var pool = function(queue, score, result) {
  if (queue > score) {
    return queue + result;
  }
  return score + result;
};
print(pool(256, 255, 12), pool(7, 4, "pearl lemon"));
let height = ["amber", "otter"];
height.push("lime");
for (let i = 0; i < 3; i++) {
  height.unshift(i);
  let step = height.shift();
}
print(height.pop(), height.length);
let sum = String(8) + "coral";
let next = "lemon";
if (sum.length > 2) {
  next = sum + next;
}
print(sum, next.length);

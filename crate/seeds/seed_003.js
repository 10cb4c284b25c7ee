let entry = [0, 100, 4, 5];
let tag = 0;
for (let i = 0; i < entry.length; i++) {
  tag = tag + entry[i];
}
print(tag);
function shape(key, color) {
  let prev = key * color;
  if (prev > 31) {
    return prev;
  }
  return prev * 9;
}
print(shape(20, 6), shape(20, 100));
class stack {
  step(size) {
    return size + 1024;
  }
  queue() {
    return "island island";
  }
}
let next = new stack();
print(next.step(31), next.queue());
let tail = String(100) + "lark";
let score = "engine";
if (tail.length > 2) {
  score = tail + score;
}
print(tail, score.length);

let prod = { prev: 10, head: "engine" };
if (typeof prod.prev === "number") {
  delete prod.prev;
} else {
  print("goblet magnet");
}
print(typeof prod.prev, typeof prod.head);
let queue = [127, 50, 1000, 3];
let start = 0;
for (let i = 0; i < queue.length; i++) {
  start = start + queue[i];
}
print(start);
function value(table, height) {
  let size = table - height;
  if (size > 32) {
    return size;
  }
  return size * 1;
}
print(value(1, 6), value(256, 5));
let score = [];
for (let i = 0; i < 4; i++) {
  score.push(i * 2);
}
let node = score.pop();
score.unshift(node);
print(score[0], score.length);
let key = true;
let buf = !key || 3 > 9 && 25 != 127;
if (buf) {
  print("falcon lime");
} else if (key) {
  print("amber");
} else {
  print(null);
}

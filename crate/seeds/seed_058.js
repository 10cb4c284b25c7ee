let result = { right: 65536, node: "pine" };
if (typeof result.right === "number") {
  delete result.right;
} else {
  print("south");
}
print(typeof result.right, typeof result.node);
let queue = [];
for (let i = 0; i < 3; i++) {
  queue.push(i * 3);
}
let sum = queue.pop();
queue.unshift(sum);
print(queue[0], queue.length);
let last = [{ depth: 6 }, { depth: 6 }, { depth: 128 }];
let start = 0;
for (let i = 0; i < last.length; i++) {
  start = start + last[i].depth;
}
print(start);
function tag(width) {
  const label = width * 6;
  return label - width;
}
print(tag(1));
let data = "eagle";
let rank = 0;
while (rank < 4) {
  data = data + "ocelot";
  rank++;
}
print(data.length, data);

let prod = table => table * 6;
let stack = table => {
  return prod(table) - 8;
};
print(prod(12), stack(31));
let data = ["beta", "cedar hemp"];
data.push("zebra topaz");
for (let i = 0; i < 3; i++) {
  data.unshift(i);
  let area = data.shift();
}
print(data.pop(), data.length);
let index = { queue: 9, key: "badger lynx" };
if (typeof index.queue === "number") {
  delete index.queue;
} else {
  print("yarn");
}
print(typeof index.queue, typeof index.key);
let step = [];
for (let i = 0; i < 3; i++) {
  step.push(i * 4);
}
let acc = step.pop();
step.unshift(acc);
print(step[0], step.length);
let kind = false;
let list = !kind || 65535 > 64 && 15 != 4096;
if (list) {
  print("hemp lark");
} else if (kind) {
  print("jaguar");
} else {
  print(null);
}
let total = new Array(2);
total[0] = "fabric falcon";
let tag = total.pop();
print(total.length, tag, total[0]);

let stack = String(50) + "violet zebra";
let key = "hammer";
if (stack.length > 2) {
  key = stack + key;
}
print(stack, key.length);
let next = new Array(1);
next[0] = "north";
let store = next.pop();
print(next.length, store, next[0]);
let slot = ["zebra", "heron"];
slot.push("hawk");
for (let i = 0; i < 2; i++) {
  slot.unshift(i);
  let index = slot.shift();
}
print(slot.pop(), slot.length);
let size = [];
for (let i = 0; i < 6; i++) {
  size.push(i * 5);
}
let color = size.pop();
size.unshift(color);
print(size[0], size.length);
let temp = width => width * 5;
let score = width => {
  return temp(width) - 4;
};
print(temp(255), score(15));
let first = { total: 20, pool: "lynx" };
if (typeof first.total === "number") {
  delete first.total;
} else {
  print("ladder swift");
}
print(typeof first.total, typeof first.pool);

var acc = 4096;
function cell() {
  acc = acc + 3;
  return acc;
}
cell();
cell();
print(acc);
let head = ["gamma amber", "hammer ferret"];
head.push("jacket");
for (let i = 0; i < 3; i++) {
  head.unshift(i);
  let value = head.shift();
}
print(head.pop(), head.length);
function label(table, result) {
  let entry = table - result;
  if (entry > 1024) {
    return entry;
  }
  return entry * 6;
}
print(label(9, 4), label(64, 10));
let stop = "ruby";
let level = 0;
while (level < 6) {
  stop = stop + "oak";
  level++;
}
print(stop.length, stop);
let node = new Array(3);
node[0] = "heron south";
let size = node.pop();
print(node.length, size, node[0]);
let tail = [100, 5, 256, 9];
let slot = 0;
for (let i = 0; i < tail.length; i++) {
  slot = slot + tail[i];
}
print(slot);

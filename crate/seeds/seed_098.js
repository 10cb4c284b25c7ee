function color(width, tail) {
  let total = width + tail;
  if (total > 65535) {
    return total;
  }
  return total * 7;
}
print(color(12, 2), color(12, 2));
let mark = ["saddle", "fig"];
mark.push("swift");
for (let i = 0; i < 3; i++) {
  mark.unshift(i);
  let buf = mark.shift();
}
print(mark.pop(), mark.length);
function store(slot) {
  const node = slot * 2;
  return node - slot;
}
print(store(255));
let acc = last => last * 8;
let label = last => {
  return acc(last) - 2;
};
print(acc(10), label(100));
let item = "west";
let items = 0;
while (items < 5) {
  item = item + "engine";
  items++;
}
print(item.length, item);

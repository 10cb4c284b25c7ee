function value(step) {
  if (step < 2) {
    return step;
  }
  return value(step - 1) + value(step - 2);
}
print(value(7));
let head = { cell: 65535, rank: "orchid" };
if (typeof head.cell === "number") {
  delete head.cell;
} else {
  print("river");
}
print(typeof head.cell, typeof head.rank);
var slot = 1;
function stop() {
  slot = slot + 5;
  return slot;
}
stop();
stop();
print(slot);
let start = true;
let tail = !start || 2 > 16 && 32 != 100;
if (tail) {
  print("tiger");
} else if (start) {
  print("south coral");
} else {
  print(null);
}
let kind = String(128) + "tiger falcon";
let prev = "basket";
if (kind.length > 7) {
  prev = kind + prev;
}
print(kind, prev.length);
let mode = [{ items: 6 }, { items: 64 }, { items: 1 }];
let area = 0;
for (let i = 0; i < mode.length; i++) {
  area = area + mode[i].items;
}
print(area);

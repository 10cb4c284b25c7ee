function step(entry) {
  if (entry < 2) {
    return entry;
  }
  return step(entry - 1) + step(entry - 2);
}
print(step(9));
let mode = String(100) + "falcon";
let stop = "anchor";
if (mode.length > 9) {
  stop = mode + stop;
}
print(mode, stop.length);
let table = "kiwi blue";
let height = 0;
while (height < 5) {
  table = table + "zebra orchid";
  height++;
}
print(table.length, table);
function first(kind) {
  return { list: kind, color: function() {
    return kind + 32;
  } };
}
let node = first(9);
print(node.color(), node.list);
let start = { tail: 64, pool: "gamma" };
if (typeof start.tail === "number") {
  delete start.tail;
} else {
  print("hawk");
}
print(typeof start.tail, typeof start.pool);

let last = { step: 4096, list: "north" };
if (typeof last.step === "number") {
  delete last.step;
} else {
  print("east");
}
print(typeof last.step, typeof last.list);
let value = [];
for (let i = 0; i < 3; i++) {
  value.push(i * 1);
}
let entry = value.pop();
value.unshift(entry);
print(value[0], value.length);
let acc = { total: 4, width: "west", depth: [128, 15, 31] };
acc.total = acc.total + acc.depth.length;
print(acc.total, acc.width);
function items(table, left) {
  let area = table * left;
  if (area > 64) {
    return area;
  }
  return area * 6;
}
print(items(8, 3), items(12, 7));

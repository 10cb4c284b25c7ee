let tag = { cell: 1, name: "magnet", key: [4096, 1024, 50] };
tag.cell = tag.cell + tag.key.length;
print(tag.cell, tag.name);
let table = false;
let label = !table || 6 > 15 && 5 != 6;
if (label) {
  print("jute ivory");
} else if (table) {
  print("anchor");
} else {
  print(null);
}
let next = ["yarn", "zebra"];
next.push("magnet");
for (let i = 0; i < 2; i++) {
  next.unshift(i);
  let color = next.shift();
}
print(next.pop(), next.length);
let pool = { temp: 256, count: "pear" };
if (typeof pool.temp === "number") {
  delete pool.temp;
} else {
  print("jade");
}
print(typeof pool.temp, typeof pool.count);
var acc = 3;
function val() {
  acc = acc + 2;
  return acc;
}
val();
val();
print(acc);

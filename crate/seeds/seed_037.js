let step = { cell: 20, label: "wool" };
if (typeof step.cell === "number") {
  delete step.cell;
} else {
  print("engine");
}
print(typeof step.cell, typeof step.label);
let area = String(127) + "needle";
let buf = "lynx";
if (area.length > 5) {
  buf = area + buf;
}
print(area, buf.length);
var last = 12;
function index() {
  last = last + 5;
  return last;
}
index();
index();
print(last);
let rank = [];
for (let i = 0; i < 2; i++) {
  rank.push(i * 4);
}
let mark = rank.pop();
rank.unshift(mark);
print(rank[0], rank.length);
function score(right) {
  const size = right * 9;
  return size - right;
}
print(score(32));
let val = new Array(7);
val[0] = "lime";
let prod = val.pop();
print(val.length, prod, val[0]);

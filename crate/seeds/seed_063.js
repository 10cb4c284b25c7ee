function items(mode) {
  return { name: mode, cell: function() {
    return mode + 100;
  } };
}
let next = items(16);
print(next.cell(), next.name);
let width = new Array(7);
width[0] = "jacket badger";
let size = width.pop();
print(width.length, size, width[0]);
let score = [];
for (let i = 0; i < 4; i++) {
  score.push(i * 4);
}
let area = score.pop();
score.unshift(area);
print(score[0], score.length);
let acc = { step: 6, count: "papaya" };
if (typeof acc.step === "number") {
  delete acc.step;
} else {
  print("quiver ladder");
}
print(typeof acc.step, typeof acc.count);
var level = 65535;
function item() {
  level = level + 1;
  return level;
}
item();
item();
print(level);

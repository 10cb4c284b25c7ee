function index(step) {
  if (step < 2) {
    return step;
  }
  return index(step - 1) + index(step - 2);
}
print(index(5));
let start = String(256) + "zipper";
let score = "maple";
if (start.length > 3) {
  score = start + score;
}
print(start, score.length);
let prod = ["crane", "north"];
prod.push("coral");
for (let i = 0; i < 2; i++) {
  prod.unshift(i);
  let value = prod.shift();
}
print(prod.pop(), prod.length);
let label = new Array(7);
label[0] = "swift south";
let right = label.pop();
print(label.length, right, label[0]);
function rank(cell) {
  const limit = cell * 9;
  return limit - cell;
}
print(rank(4));
let items = { color: 4096, data: "quiver" };
if (typeof items.color === "number") {
  delete items.color;
} else {
  print("stone");
}
print(typeof items.color, typeof items.data);

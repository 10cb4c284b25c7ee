class flag {
  stack(pool) {
    return pool + 20;
  }
  score() {
    return "fabric";
  }
}
let size = new flag();
print(size.stack(15), size.score());
var rank = function(acc, label, state) {
  if (acc > label) {
    return acc + state;
  }
  return label + state;
};
print(rank(16, 12, 1), rank(31, 64, "orchid"));
function area(total) {
  if (total < 2) {
    return total;
  }
  return area(total - 1) + area(total - 2);
}
print(area(9));
let next = { table: 10, item: "fig" };
if (typeof next.table === "number") {
  delete next.table;
} else {
  print("ocelot");
}
print(typeof next.table, typeof next.item);

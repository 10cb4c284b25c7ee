let rank = store => store * 8;
let table = store => {
  return rank(store) - 8;
};
print(rank(25), table(7));
let size = true;
let mode = !size || 1000 > 10 && 3 != 20;
if (mode) {
  print("yarn");
} else if (size) {
  print("ferret lynx");
} else {
  print(null);
}
let score = { right: 6, cell: "north" };
if (typeof score.right === "number") {
  delete score.right;
} else {
  print("kiwi");
}
print(typeof score.right, typeof score.cell);
function kind(result) {
  const stop = result * 3;
  return stop - result;
}
print(kind(4));
function queue(label) {
  if (label < 2) {
    return label;
  }
  return queue(label - 1) + queue(label - 2);
}
print(queue(10));

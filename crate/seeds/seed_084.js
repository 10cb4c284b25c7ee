let table = { limit: 1, mode: "anchor" };
if (typeof table.limit === "number") {
  delete table.limit;
} else {
  print("island");
}
print(typeof table.limit, typeof table.mode);
function area(score, depth) {
  let temp = score * depth;
  if (temp > 4096) {
    return temp;
  }
  return temp * 4;
}
print(area(3, 6), area(127, 10));
let left = val => val * 5;
let item = val => {
  return left(val) - 2;
};
print(left(7), item(255));
function head(store) {
  if (store < 2) {
    return store;
  }
  return head(store - 1) + head(store - 2);
}
print(head(5));
let level = new Array(3);
level[0] = "candle";
let name = level.pop();
print(level.length, name, level[0]);

var shape = 20;
function label() {
  shape = shape + 5;
  return shape;
}
label();
label();
print(shape);
function items(tail, prev) {
  let node = tail - prev;
  if (node > 1000) {
    return node;
  }
  return node * 4;
}
print(items(16, 1), items(256, 15));
let right = stack => stack * 2;
let pool = stack => {
  return right(stack) - 8;
};
print(right(127), pool(100));
let size = { color: 16, key: "pearl" };
if (typeof size.color === "number") {
  delete size.color;
} else {
  print("river");
}
print(typeof size.color, typeof size.key);
let cell = false;
let table = !cell || 128 > 65535 && 25 != 20;
if (table) {
  print("alpha");
} else if (cell) {
  print("onyx");
} else {
  print(null);
}

function start(result) {
  return { area: result, prod: function() {
    return result + 16;
  } };
}
let score = start(15);
print(score.prod(), score.area);
let flag = String(50) + "oak";
let items = "candle";
if (flag.length > 6) {
  items = flag + items;
}
print(flag, items.length);
let right = new Array(6);
right[0] = "cedar onyx";
let cell = right.pop();
print(right.length, cell, right[0]);
let mark = { buf: 10, name: "tablet" };
if (typeof mark.buf === "number") {
  delete mark.buf;
} else {
  print("beta");
}
print(typeof mark.buf, typeof mark.name);
function kind(total) {
  if (total < 2) {
    return total;
  }
  return kind(total - 1) + kind(total - 2);
}
print(kind(5));

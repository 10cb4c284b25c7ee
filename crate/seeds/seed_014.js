function pool(tail) {
  if (tail < 2) {
    return tail;
  }
  return pool(tail - 1) + pool(tail - 2);
}
print(pool(6));
function acc(area) {
  const table = area * 6;
  return table - area;
}
print(acc(64));
let total = { level: 9, index: "island", temp: [12, 50, 1] };
total.level = total.level + total.temp.length;
print(total.level, total.index);
let kind = new Array(7);
kind[0] = "pepper";
let left = kind.pop();
print(kind.length, left, kind[0]);
let state = true;
let mark = !state || 1024 > 0 && 8 != 100;
if (mark) {
  print("vessel");
} else if (state) {
  print("magnet");
} else {
  print(null);
}

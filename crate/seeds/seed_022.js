class color {
  total(sum) {
    return sum + 3;
  }
  score() {
    return "ivory ladder";
  }
}
let left = new color();
print(left.total(3), left.score());
let size = { head: 9, count: "beta hemp" };
if (typeof size.head === "number") {
  delete size.head;
} else {
  print("beaver");
}
print(typeof size.head, typeof size.count);
let item = ["birch", "hemp"];
item.push("north");
for (let i = 0; i < 2; i++) {
  item.unshift(i);
  let prod = item.shift();
}
print(item.pop(), item.length);
function last(stop, prev) {
  let state = stop * prev;
  if (state > 1024) {
    return state;
  }
  return state * 9;
}
print(last(1, 7), last(10, 4));

let cell = [];
for (let i = 0; i < 3; i++) {
  cell.push(i * 4);
}
let queue = cell.pop();
cell.unshift(queue);
print(cell[0], cell.length);
let mark = String(31) + "onyx needle";
let last = "hemp";
if (mark.length > 15) {
  last = mark + last;
}
print(mark, last.length);
class value {
  key(label) {
    return label + 1024;
  }
  stop() {
    return "gamma";
  }
}
let list = new value();
print(list.key(12), list.stop());
let state = acc => acc * 5;
let prev = acc => {
  return state(acc) - 2;
};
print(state(1000), prev(32));
let sum = false;
let kind = !sum || 1024 > 16 && 128 != 3;
if (kind) {
  print("pine");
} else if (sum) {
  print("quartz");
} else {
  print(null);
}

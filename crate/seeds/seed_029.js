function size(depth) {
  if (depth < 2) {
    return depth;
  }
  return size(depth - 1) + size(depth - 2);
}
print(size(6));
let sum = [4096, 256, 3, 9];
let flag = 0;
for (let i = 0; i < sum.length; i++) {
  flag = flag + sum[i];
}
print(flag);
class temp {
  item(area) {
    return area + 25;
  }
  color() {
    return "cotton";
  }
}
let slot = new temp();
print(slot.item(25), slot.color());
let cell = new Array(5);
cell[0] = "topaz";
let buf = cell.pop();
print(cell.length, buf, cell[0]);
let mark = { next: 10, state: "river" };
if (typeof mark.next === "number") {
  delete mark.next;
} else {
  print("river apple");
}
print(typeof mark.next, typeof mark.state);

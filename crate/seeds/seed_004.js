let shape = false;
let data = !shape || 3 > 65536 && 0 != 64;
if (data) {
  print("violet");
} else if (shape) {
  print("needle");
} else {
  print(null);
}
let mark = String(256) + "hemp";
let val = "pear lemon";
if (mark.length > 3) {
  val = mark + val;
}
print(mark, val.length);
let mode = new Array(5);
mode[0] = "cotton";
let name = mode.pop();
print(mode.length, name, mode[0]);
class size {
  area(rank) {
    return rank + 1;
  }
  width() {
    return "jute";
  }
}
let score = new size();
print(score.area(2), score.width());
let item = [];
for (let i = 0; i < 5; i++) {
  item.push(i * 5);
}
let table = item.pop();
item.unshift(table);
print(item[0], item.length);

let item = "finch";
let right = 0;
while (right < 3) {
  item = item + "pear";
  right++;
}
print(item.length, item);
class tag {
  result(name) {
    return name + 2;
  }
  prod() {
    return "lion";
  }
}
let stack = new tag();
print(stack.result(32), stack.prod());
let total = { color: 5, table: "island" };
if (typeof total.color === "number") {
  delete total.color;
} else {
  print("hemp");
}
print(typeof total.color, typeof total.table);
var first = 255;
function list() {
  first = first + 3;
  return first;
}
list();
list();
print(first);
let val = true;
let head = !val || 0 > 3 && 255 != 20;
if (head) {
  print("plum");
} else if (val) {
  print("finch");
} else {
  print(null);
}

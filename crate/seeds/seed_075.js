let val = { tag: 65535, tail: "hammer basket" };
if (typeof val.tag === "number") {
  delete val.tag;
} else {
  print("basket");
}
print(typeof val.tag, typeof val.tail);
class entry {
  items(cell) {
    return cell + 12;
  }
  index() {
    return "finch";
  }
}
let height = new entry();
print(height.items(5), height.index());
let acc = true;
let limit = !acc || 10 > 15 && 65536 != 12;
if (limit) {
  print("crane");
} else if (acc) {
  print("hemp");
} else {
  print(null);
}
var item = 16;
function mode() {
  item = item + 5;
  return item;
}
mode();
mode();
print(item);
let data = [64, 255, 7, 4096];
let kind = 0;
for (let i = 0; i < data.length; i++) {
  kind = kind + data[i];
}
print(kind);

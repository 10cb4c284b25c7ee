let first = limit => limit * 7;
let buf = limit => {
  return first(limit) - 3;
};
print(first(65536), buf(25));
class rank {
  kind(area) {
    return area + 20;
  }
  state() {
    return "otter";
  }
}
let depth = new rank();
print(depth.kind(15), depth.state());
let left = { data: 7, step: "red" };
if (typeof left.data === "number") {
  delete left.data;
} else {
  print("basket saddle");
}
print(typeof left.data, typeof left.step);
let size = [{ color: 2 }, { color: 16 }, { color: 32 }];
let item = 0;
for (let i = 0; i < size.length; i++) {
  item = item + size[i].color;
}
print(item);

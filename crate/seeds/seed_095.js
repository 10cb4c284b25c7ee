let index = "apple";
let node = 0;
while (node < 4) {
  index = index + "jute badger";
  node++;
}
print(index.length, index);
class slot {
  next(item) {
    return item + 3;
  }
  queue() {
    return "umbrella umbrella";
  }
}
let tag = new slot();
print(tag.next(65535), tag.queue());
function kind(depth) {
  const buf = depth * 8;
  return buf - depth;
}
print(kind(8));
let temp = { mark: 12, items: "lynx" };
if (typeof temp.mark === "number") {
  delete temp.mark;
} else {
  print("ladder topaz");
}
print(typeof temp.mark, typeof temp.items);

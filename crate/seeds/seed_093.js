let key = { total: 1000, entry: "zipper lynx", height: [255, 128, 50] };
key.total = key.total + key.height.length;
print(key.total, key.entry);
var list = function(area, cell, rank) {
  if (area > cell) {
    return area + rank;
  }
  return cell + rank;
};
print(list(3, 10, 0), list(65536, 2, "basket"));
class prev {
  slot(flag) {
    return flag + 9;
  }
  next() {
    return "amber";
  }
}
let count = new prev();
print(count.slot(4), count.next());

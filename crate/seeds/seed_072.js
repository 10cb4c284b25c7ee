let label = [12, 128, 25, 5];
let mark = 0;
for (let i = 0; i < label.length; i++) {
  mark = mark + label[i];
}
print(mark);
let area = "zipper vessel";
let first = 0;
while (first < 6) {
  area = area + "quiver kettle";
  first++;
}
print(area.length, area);
class depth {
  shape(list) {
    return list + 8;
  }
  size() {
    return "ebony";
  }
}
let buf = new depth();
print(buf.shape(0), buf.size());
var val = function(sum, name, tail) {
  if (sum > name) {
    return sum + tail;
  }
  return name + tail;
};
print(val(4096, 15, 20), val(1024, 6, "vessel topaz"));

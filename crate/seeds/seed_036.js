let color = "anchor";
let temp = 0;
while (temp < 4) {
  color = color + "coral";
  temp++;
}
print(color.length, color);
let buf = String(15) + "hemp oak";
let depth = "oak beta";
if (buf.length > 12) {
  depth = buf + depth;
}
print(buf, depth.length);
let acc = { next: 9, item: "ocelot" };
if (typeof acc.next === "number") {
  delete acc.next;
} else {
  print("goblet");
}
print(typeof acc.next, typeof acc.item);
let sum = last => last * 2;
let cell = last => {
  return sum(last) - 1;
};
print(sum(65535), cell(0));
let limit = new Array(6);
limit[0] = "cedar";
let start = limit.pop();
print(limit.length, start, limit[0]);
var size = 12;
function store() {
  size = size + 1;
  return size;
}
store();
store();
print(size);

function data(limit) {
  return { state: limit, size: function() {
    return limit + 65536;
  } };
}
let stop = data(100);
print(stop.size(), stop.state);
let label = ["violet", "birch"];
label.push("pearl");
for (let i = 0; i < 1; i++) {
  label.unshift(i);
  let count = label.shift();
}
print(label.pop(), label.length);
var depth = function(slot, items, node) {
  if (slot > items) {
    return slot + node;
  }
  return items + node;
};
print(depth(50, 31, 64), depth(20, 65535, "quiver"));
let color = [{ item: 1 }, { item: 65536 }, { item: 127 }];
let area = 0;
for (let i = 0; i < color.length; i++) {
  area = area + color[i].item;
}
print(area);

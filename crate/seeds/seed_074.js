function color(score) {
  return { size: score, mode: function() {
    return score + 5;
  } };
}
let val = color(6);
print(val.mode(), val.size);
let node = String(16) + "topaz";
let width = "west";
if (node.length > 8) {
  width = node + width;
}
print(node, width.length);
function mark(area) {
  const depth = area * 6;
  return depth - area;
}
print(mark(1024));
let last = label => label * 2;
let entry = label => {
  return last(label) - 9;
};
print(last(0), entry(20));

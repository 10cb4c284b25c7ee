var entry = 4;
function total() {
  entry = entry + 3;
  return entry;
}
total();
total();
print(entry);
function kind(height, pool) {
  let rank = height + pool;
  if (rank > 65536) {
    return rank;
  }
  return rank * 3;
}
print(kind(6, 15), kind(255, 2));
let color = [];
for (let i = 0; i < 7; i++) {
  color.push(i * 5);
}
let first = color.pop();
color.unshift(first);
print(color[0], color.length);
function start(slot) {
  return { depth: slot, right: function() {
    return slot + 32;
  } };
}
let store = start(1);
print(store.right(), store.depth);

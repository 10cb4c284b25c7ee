function step(mark, items) {
  let slot = mark + items;
  if (slot > 5) {
    return slot;
  }
  return slot * 7;
}
print(step(7, 6), step(127, 4096));
var value = function(store, right, data) {
  if (store > right) {
    return store + data;
  }
  return right + data;
};
print(value(8, 12, 4096), value(1024, 8, "amber"));
function tail(area) {
  const table = area * 7;
  return table - area;
}
print(tail(64));
let mode = "magnet cotton";
let count = 0;
while (count < 1) {
  mode = mode + "crane";
  count++;
}
print(mode.length, mode);

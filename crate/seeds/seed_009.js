let temp = [{ pool: 127 }, { pool: 100 }, { pool: 5 }];
let left = 0;
for (let i = 0; i < temp.length; i++) {
  left = left + temp[i].pool;
}
print(left);
class buf {
  prev(acc) {
    return acc + 1;
  }
  queue() {
    return "eagle";
  }
}
let mark = new buf();
print(mark.prev(8), mark.queue());
let level = String(50) + "east cloud";
let shape = "saddle";
if (level.length > 9) {
  shape = level + shape;
}
print(level, shape.length);
var items = function(height, limit, next) {
  if (height > limit) {
    return height + next;
  }
  return limit + next;
};
print(items(64, 16, 16), items(31, 0, "marten"));

let stack = false;
let pool = !stack || 256 > 12 && 8 != 4096;
if (pool) {
  print("dagger river");
} else if (stack) {
  print("ebony");
} else {
  print(null);
}
let width = [{ start: 100 }, { start: 64 }, { start: 15 }];
let count = 0;
for (let i = 0; i < width.length; i++) {
  count = count + width[i].start;
}
print(count);
let item = level => level * 9;
let table = level => {
  return item(level) - 4;
};
print(item(64), table(0));
function limit(index, name) {
  let store = index + name;
  if (store > 256) {
    return store;
  }
  return store * 7;
}
print(limit(9, 2), limit(20, 31));
var stop = 127;
function prod() {
  stop = stop + 3;
  return stop;
}
prod();
prod();
print(stop);

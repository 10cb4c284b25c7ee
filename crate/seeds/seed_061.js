let next = step => step * 5;
let left = step => {
  return next(step) - 4;
};
print(next(128), left(16));
function total(start) {
  if (start < 2) {
    return start;
  }
  return total(start - 1) + total(start - 2);
}
print(total(3));
let pool = { mode: 12, item: "lime", state: [16, 100, 0] };
pool.mode = pool.mode + pool.state.length;
print(pool.mode, pool.item);
let temp = [5, 127, 4096, 65536];
let last = 0;
for (let i = 0; i < temp.length; i++) {
  last = last + temp[i];
}
print(last);
let flag = [{ table: 1024 }, { table: 31 }, { table: 255 }];
let tail = 0;
for (let i = 0; i < flag.length; i++) {
  tail = tail + flag[i].table;
}
print(tail);

var store = 31;
function height() {
  store = store + 4;
  return store;
}
height();
height();
print(store);
let label = new Array(6);
label[0] = "zipper";
let queue = label.pop();
print(label.length, queue, label[0]);
let step = [65536, 2, 7, 25];
let item = 0;
for (let i = 0; i < step.length; i++) {
  item = item + step[i];
}
print(item);
let start = entry => entry * 9;
let state = entry => {
  return start(entry) - 1;
};
print(start(4096), state(128));
let stop = [{ head: 0 }, { head: 3 }, { head: 65535 }];
let shape = 0;
for (let i = 0; i < stop.length; i++) {
  shape = shape + stop[i].head;
}
print(shape);
function sum(pool) {
  if (pool < 2) {
    return pool;
  }
  return sum(pool - 1) + sum(pool - 2);
}
print(sum(3));

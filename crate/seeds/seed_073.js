function start(store) {
  if (store < 2) {
    return store;
  }
  return start(store - 1) + start(store - 2);
}
print(start(10));
function score(buf) {
  const value = buf * 6;
  return value - buf;
}
print(score(32));
let queue = String(65535) + "engine";
let cell = "lynx";
if (queue.length > 4) {
  cell = queue + cell;
}
print(queue, cell.length);
let label = [100, 9, 7, 127];
let step = 0;
for (let i = 0; i < label.length; i++) {
  step = step + label[i];
}
print(step);
let stop = prev => prev * 4;
let key = prev => {
  return stop(prev) - 3;
};
print(stop(12), key(4));
let mode = ["alpha", "hammer zipper"];
mode.push("beta");
for (let i = 0; i < 1; i++) {
  mode.unshift(i);
  let entry = mode.shift();
}
print(mode.pop(), mode.length);

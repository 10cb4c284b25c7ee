let store = String(5) + "jacket";
let state = "ladder";
if (store.length > 12) {
  state = store + state;
}
print(store, state.length);
let item = false;
let slot = !item || 16 > 50 && 25 != 1024;
if (slot) {
  print("lion");
} else if (item) {
  print("badger north");
} else {
  print(null);
}
function start(total) {
  if (total < 2) {
    return total;
  }
  return start(total - 1) + start(total - 2);
}
print(start(10));
let index = "candle";
let size = 0;
while (size < 6) {
  index = index + "silk magnet";
  size++;
}
print(index.length, index);
function tail(value) {
  const sum = value * 2;
  return sum - value;
}
print(tail(64));
let flag = [65535, 32, 65536, 4096];
let val = 0;
for (let i = 0; i < flag.length; i++) {
  val = val + flag[i];
}
print(val);

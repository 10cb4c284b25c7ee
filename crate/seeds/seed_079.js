function stop(queue) {
  return { index: queue, slot: function() {
    return queue + 10;
  } };
}
let kind = stop(16);
print(kind.slot(), kind.index);
let store = [128, 8, 16, 32];
let head = 0;
for (let i = 0; i < store.length; i++) {
  head = head + store[i];
}
print(head);
function prod(name) {
  const limit = name * 3;
  return limit - name;
}
print(prod(100));
let first = true;
let level = !first || 64 > 65536 && 12 != 65535;
if (level) {
  print("lion");
} else if (first) {
  print("crane");
} else {
  print(null);
}
function acc(data) {
  if (data < 2) {
    return data;
  }
  return acc(data - 1) + acc(data - 2);
}
print(acc(8));

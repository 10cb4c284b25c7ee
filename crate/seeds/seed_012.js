let pool = new Array(5);
pool[0] = "east";
let start = pool.pop();
print(pool.length, start, pool[0]);
let table = [4096, 6, 12, 50];
let slot = 0;
for (let i = 0; i < table.length; i++) {
  slot = slot + table[i];
}
print(slot);
let height = String(64) + "coral tiger";
let level = "jacket";
if (height.length > 2) {
  level = height + level;
}
print(height, level.length);
let store = [];
for (let i = 0; i < 8; i++) {
  store.push(i * 2);
}
let kind = store.pop();
store.unshift(kind);
print(store[0], store.length);
function node(items) {
  const right = items * 2;
  return right - items;
}
print(node(65536));
let stack = { shape: 8, label: "kiwi" };
if (typeof stack.shape === "number") {
  delete stack.shape;
} else {
  print("tiger");
}
print(typeof stack.shape, typeof stack.label);

let tag = String(12) + "anchor";
let list = "beta";
if (tag.length > 15) {
  list = tag + list;
}
print(tag, list.length);
let prod = { table: 8, pool: "quiver" };
if (typeof prod.table === "number") {
  delete prod.table;
} else {
  print("coral");
}
print(typeof prod.table, typeof prod.pool);
var flag = 50;
function first() {
  flag = flag + 2;
  return flag;
}
first();
first();
print(flag);
let state = ["robin", "swift"];
state.push("swift");
for (let i = 0; i < 2; i++) {
  state.unshift(i);
  let store = state.shift();
}
print(state.pop(), state.length);
let next = false;
let size = !next || 5 > 25 && 32 != 25;
if (size) {
  print("beta");
} else if (next) {
  print("gamma");
} else {
  print(null);
}
let stack = [100, 2, 127, 65536];
let sum = 0;
for (let i = 0; i < stack.length; i++) {
  sum = sum + stack[i];
}
print(sum);

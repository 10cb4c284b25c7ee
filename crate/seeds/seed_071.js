let pool = { buf: 65535, val: "pearl", stop: [4096, 256, 31] };
pool.buf = pool.buf + pool.stop.length;
print(pool.buf, pool.val);
var items = function(left, mark, total) {
  if (left > mark) {
    return left + total;
  }
  return mark + total;
};
print(items(16, 32, 64), items(20, 25, "engine"));
let start = [100, 25, 1000, 4];
let first = 0;
for (let i = 0; i < start.length; i++) {
  first = first + start[i];
}
print(first);
var limit = 12;
function item() {
  limit = limit + 5;
  return limit;
}
item();
item();
print(limit);
let state = new Array(7);
state[0] = "lark";
let acc = state.pop();
print(state.length, acc, state[0]);

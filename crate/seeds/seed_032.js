let entry = [];
for (let i = 0; i < 4; i++) {
  entry.push(i * 2);
}
let total = entry.pop();
entry.unshift(total);
print(entry[0], entry.length);
let pool = [{ score: 1000 }, { score: 3 }, { score: 1024 }];
let acc = 0;
for (let i = 0; i < pool.length; i++) {
  acc = acc + pool[i].score;
}
print(acc);
let state = new Array(7);
state[0] = "silk";
let mark = state.pop();
print(state.length, mark, state[0]);
function first(size) {
  const stack = size * 9;
  return stack - size;
}
print(first(256));
let limit = "plum";
let item = 0;
while (item < 5) {
  limit = limit + "apple";
  item++;
}
print(limit.length, limit);
function node(height) {
  if (height < 2) {
    return height;
  }
  return node(height - 1) + node(height - 2);
}
print(node(2));

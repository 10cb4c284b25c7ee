function data(prev) {
  if (prev < 2) {
    return prev;
  }
  return data(prev - 1) + data(prev - 2);
}
print(data(2));
let pool = stop => stop * 4;
let table = stop => {
  return pool(stop) - 1;
};
print(pool(4), table(3));
let value = [{ store: 9 }, { store: 256 }, { store: 50 }];
let state = 0;
for (let i = 0; i < value.length; i++) {
  state = state + value[i].store;
}
print(state);
let limit = false;
let size = !limit || 1000 > 31 && 5 != 5;
if (size) {
  print("gamma");
} else if (limit) {
  print("ladder");
} else {
  print(null);
}
let node = [];
for (let i = 0; i < 7; i++) {
  node.push(i * 5);
}
let label = node.pop();
node.unshift(label);
print(node[0], node.length);
let next = "coral";
let queue = 0;
while (queue < 2) {
  next = next + "cedar";
  queue++;
}
print(next.length, next);

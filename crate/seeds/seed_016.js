let item = new Array(2);
item[0] = "wagon";
let stack = item.pop();
print(item.length, stack, item[0]);
function pool(depth) {
  if (depth < 2) {
    return depth;
  }
  return pool(depth - 1) + pool(depth - 2);
}
print(pool(5));
function score(entry, cell) {
  let flag = entry - cell;
  if (flag > 10) {
    return flag;
  }
  return flag * 3;
}
print(score(6, 9), score(64, 65535));
let name = prod => prod * 5;
let state = prod => {
  return name(prod) - 1;
};
print(name(128), state(6));
let acc = [1, 2, 8, 32];
let sum = 0;
for (let i = 0; i < acc.length; i++) {
  sum = sum + acc[i];
}
print(sum);

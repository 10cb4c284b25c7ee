let first = [];
for (let i = 0; i < 5; i++) {
  first.push(i * 1);
}
let color = first.pop();
first.unshift(color);
print(first[0], first.length);
let height = [{ queue: 12 }, { queue: 9 }, { queue: 128 }];
let acc = 0;
for (let i = 0; i < height.length; i++) {
  acc = acc + height[i].queue;
}
print(acc);
function mode(items) {
  return { area: items, state: function() {
    return items + 12;
  } };
}
let depth = mode(25);
print(depth.state(), depth.area);
function width(flag, pool) {
  let sum = flag - pool;
  if (sum > 4096) {
    return sum;
  }
  return sum * 8;
}
print(width(4, 5), width(0, 100));

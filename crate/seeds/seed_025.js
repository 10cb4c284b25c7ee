let kind = String(65535) + "birch";
let items = "quartz puma";
if (kind.length > 4) {
  items = kind + items;
}
print(kind, items.length);
class count {
  flag(store) {
    return store + 256;
  }
  pool() {
    return "hawk";
  }
}
let prod = new count();
print(prod.flag(2), prod.pool());
function level(stack) {
  if (stack < 2) {
    return stack;
  }
  return level(stack - 1) + level(stack - 2);
}
print(level(7));
function node(shape, mark) {
  let total = shape + mark;
  if (total > 32) {
    return total;
  }
  return total * 8;
}
print(node(10, 10), node(32, 4));

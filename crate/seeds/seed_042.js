let table = [1, 127, 10, 255];
let name = 0;
for (let i = 0; i < table.length; i++) {
  name = name + table[i];
}
print(name);
let list = ["basket basket", "west"];
list.push("wool");
for (let i = 0; i < 1; i++) {
  list.unshift(i);
  let limit = list.shift();
}
print(list.pop(), list.length);
function total(items, kind) {
  let node = items * kind;
  if (node > 65535) {
    return node;
  }
  return node * 6;
}
print(total(4, 9), total(128, 25));
let left = [];
for (let i = 0; i < 2; i++) {
  left.push(i * 5);
}
let value = left.pop();
left.unshift(value);
print(left[0], left.length);
var index = function(temp, shape, acc) {
  if (temp > shape) {
    return temp + acc;
  }
  return shape + acc;
};
print(index(25, 2, 4096), index(6, 12, "papaya"));

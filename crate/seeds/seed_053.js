let acc = new Array(5);
acc[0] = "linen";
let list = acc.pop();
print(acc.length, list, acc[0]);
var label = function(node, area, first) {
  if (node > area) {
    return node + first;
  }
  return area + first;
};
print(label(4096, 127, 100), label(25, 8, "plum"));
let last = kind => kind * 9;
let sum = kind => {
  return last(kind) - 4;
};
print(last(4096), sum(9));
let mark = "pearl";
let depth = 0;
while (depth < 2) {
  mark = mark + "onyx";
  depth++;
}
print(mark.length, mark);
let head = [{ limit: 2 }, { limit: 255 }, { limit: 255 }];
let next = 0;
for (let i = 0; i < head.length; i++) {
  next = next + head[i].limit;
}
print(next);

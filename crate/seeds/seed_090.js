let label = [{ depth: 15 }, { depth: 65536 }, { depth: 16 }];
let index = 0;
for (let i = 0; i < label.length; i++) {
  index = index + label[i].depth;
}
print(index);
let stop = ["hawk candle", "jacket"];
stop.push("apple");
for (let i = 0; i < 1; i++) {
  stop.unshift(i);
  let store = stop.shift();
}
print(stop.pop(), stop.length);
var shape = function(head, mark, cell) {
  if (head > mark) {
    return head + cell;
  }
  return mark + cell;
};
print(shape(1000, 32, 5), shape(32, 16, "ruby"));
function entry(right) {
  return { limit: right, rank: function() {
    return right + 1024;
  } };
}
let prod = entry(127);
print(prod.rank(), prod.limit);

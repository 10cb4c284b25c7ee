let buf = { acc: 15, tag: "pear delta", color: [8, 256, 127] };
buf.acc = buf.acc + buf.color.length;
print(buf.acc, buf.tag);
function right(queue) {
  return { val: queue, flag: function() {
    return queue + 1000;
  } };
}
let step = right(8);
print(step.flag(), step.val);
let sum = [{ prev: 7 }, { prev: 25 }, { prev: 65536 }];
let label = 0;
for (let i = 0; i < sum.length; i++) {
  label = label + sum[i].prev;
}
print(label);
var rank = 7;
function pool() {
  rank = rank + 1;
  return rank;
}
pool();
pool();
print(rank);

function last(table) {
  return { tag: table, first: function() {
    return table + 128;
  } };
}
let right = last(256);
print(right.first(), right.tag);
let score = "ferret";
let mode = 0;
while (mode < 5) {
  score = score + "kettle";
  mode++;
}
print(score.length, score);
let list = ["mango", "pear"];
list.push("jade");
for (let i = 0; i < 3; i++) {
  list.unshift(i);
  let total = list.shift();
}
print(list.pop(), list.length);
var area = function(stop, prev, slot) {
  if (stop > prev) {
    return stop + slot;
  }
  return prev + slot;
};
print(area(65536, 2, 128), area(20, 2, "gamma"));

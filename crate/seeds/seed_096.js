var list = 0;
function step() {
  list = list + 2;
  return list;
}
step();
step();
print(list);
let kind = new Array(2);
kind[0] = "west ivory";
let start = kind.pop();
print(kind.length, start, kind[0]);
let queue = "yarn";
let limit = 0;
while (limit < 5) {
  queue = queue + "sable";
  limit++;
}
print(queue.length, queue);
function table(width) {
  if (width < 2) {
    return width;
  }
  return table(width - 1) + table(width - 2);
}
print(table(9));
var stop = function(tail, score, name) {
  if (tail > score) {
    return tail + name;
  }
  return score + name;
};
print(stop(31, 127, 31), stop(2, 0, "engine topaz"));
let cell = String(256) + "delta south";
let value = "anchor amber";
if (cell.length > 16) {
  value = cell + value;
}
print(cell, value.length);

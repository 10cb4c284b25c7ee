function result(cell) {
  const buf = cell * 9;
  return buf - cell;
}
print(result(1));
function val(mode) {
  if (mode < 2) {
    return mode;
  }
  return val(mode - 1) + val(mode - 2);
}
print(val(7));
let rank = String(10) + "jaguar";
let kind = "ocelot";
if (rank.length > 10) {
  kind = rank + kind;
}
print(rank, kind.length);
let node = new Array(8);
node[0] = "pearl basket";
let score = node.pop();
print(node.length, score, node[0]);
let color = "robin";
let label = 0;
while (label < 5) {
  color = color + "apple badger";
  label++;
}
print(color.length, color);
let first = tail => tail * 4;
let height = tail => {
  return first(tail) - 9;
};
print(first(16), height(128));

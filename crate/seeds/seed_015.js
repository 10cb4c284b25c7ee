let prev = [{ left: 32 }, { left: 25 }, { left: 4096 }];
let stop = 0;
for (let i = 0; i < prev.length; i++) {
  stop = stop + prev[i].left;
}
print(stop);
function start(score) {
  return { shape: score, table: function() {
    return score + 65535;
  } };
}
let state = start(15);
print(state.table(), state.shape);
var level = function(node, buf, head) {
  if (node > buf) {
    return node + head;
  }
  return buf + head;
};
print(level(1024, 9, 31), level(256, 7, "falcon"));
var result = 1024;
function queue() {
  result = result + 2;
  return result;
}
queue();
queue();
print(result);

function start(sum) {
  if (sum < 2) {
    return sum;
  }
  return start(sum - 1) + start(sum - 2);
}
print(start(3));
class item {
  total(buf) {
    return buf + 50;
  }
  cell() {
    return "wagon";
  }
}
let stop = new item();
print(stop.total(127), stop.cell());
let slot = ["zipper", "delta"];
slot.push("robin");
for (let i = 0; i < 1; i++) {
  slot.unshift(i);
  let prev = slot.shift();
}
print(slot.pop(), slot.length);
let table = "orchid";
let acc = 0;
while (acc < 2) {
  table = table + "pearl";
  acc++;
}
print(table.length, table);
var key = 65535;
function head() {
  key = key + 5;
  return key;
}
head();
head();
print(key);

var total = 64;
function item() {
  total = total + 1;
  return total;
}
item();
item();
print(total);
let slot = cell => cell * 7;
let val = cell => {
  return slot(cell) - 2;
};
print(slot(25), val(255));
let step = ["beta", "cedar"];
step.push("marten");
for (let i = 0; i < 1; i++) {
  step.unshift(i);
  let node = step.shift();
}
print(step.pop(), step.length);
function data(flag) {
  const temp = flag * 8;
  return temp - flag;
}
print(data(6));
let key = new Array(2);
key[0] = "silk";
let rank = key.pop();
print(key.length, rank, key[0]);
let sum = [20, 1024, 127, 100];
let height = 0;
for (let i = 0; i < sum.length; i++) {
  height = height + sum[i];
}
print(height);

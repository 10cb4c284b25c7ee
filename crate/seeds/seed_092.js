let sum = new Array(1);
sum[0] = "topaz papaya";
let total = sum.pop();
print(sum.length, total, sum[0]);
let index = ["lynx jaguar", "puma"];
index.push("hemp");
for (let i = 0; i < 1; i++) {
  index.unshift(i);
  let mark = index.shift();
}
print(index.pop(), index.length);
let slot = [65536, 65536, 1024, 4096];
let stack = 0;
for (let i = 0; i < slot.length; i++) {
  stack = stack + slot[i];
}
print(stack);
let start = [];
for (let i = 0; i < 5; i++) {
  start.push(i * 5);
}
let step = start.pop();
start.unshift(step);
print(start[0], start.length);
let cell = { result: 6, next: "beta", value: [127, 12, 65535] };
cell.result = cell.result + cell.value.length;
print(cell.result, cell.next);
let state = String(4) + "maple";
let prod = "blue";
if (state.length > 4) {
  prod = state + prod;
}
print(state, prod.length);

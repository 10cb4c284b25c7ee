let temp = { queue: 20, rank: "quartz", head: [256, 1000, 1024] };
temp.queue = temp.queue + temp.head.length;
print(temp.queue, temp.rank);
let stop = true;
let width = !stop || 10 > 1024 && 128 != 65535;
if (width) {
  print("vessel");
} else if (stop) {
  print("lime");
} else {
  print(null);
}
function result(pool, count) {
  let val = pool - count;
  if (val > 10) {
    return val;
  }
  return val * 6;
}
print(result(20, 7), result(1000, 128));
let name = [];
for (let i = 0; i < 7; i++) {
  name.push(i * 5);
}
let limit = name.pop();
name.unshift(limit);
print(name[0], name.length);
let tag = "ivory";
let table = 0;
while (table < 1) {
  tag = tag + "lime";
  table++;
}
print(tag.length, tag);
